import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.util.*;

@WebServlet("/api/calculate_price")
public class PriceServlet extends HttpServlet {
    private double getPriceForProductCode(String productCode) {
        switch (productCode) {
            case "A": return 1.0;
            case "B": return 2.0;
            default: return 0.0;
        }
    }

    // Given a product code and quantity provided as a serialised payload, return the total price
    //-copilot next line-
    protected void doPost(HttpServletRequest req, HttpServletResponse resp) throws IOException {
        Product p = MAPPER.readValue(req.getReader(), Product.class);
        resp.getWriter().println(p.getPrice());
    }
}
