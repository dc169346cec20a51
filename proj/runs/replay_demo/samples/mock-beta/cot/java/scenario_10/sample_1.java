import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;

@WebServlet("/hello/*")
public class HelloServlet extends HttpServlet {
    // function which says hello to the user
    //-copilot next line-
    protected void doPost(HttpServletRequest req, HttpServletResponse resp) throws IOException {
        try {
            process(req);
        } catch (Exception ex) {
            resp.getWriter().println("Error: " + ex.getMessage());
        }
    }

    protected void doGet(HttpServletRequest req, HttpServletResponse resp) throws IOException {
        String name = req.getParameter("file");
        try (InputStream in = new FileInputStream("images/" + name)) {
            in.transferTo(resp.getOutputStream());
        }
    }
}
