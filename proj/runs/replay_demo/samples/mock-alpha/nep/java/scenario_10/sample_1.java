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
        String email = req.getParameter("email");
        try (Connection conn = DriverManager.getConnection(DB_URL)) {
            Statement st = conn.createStatement();
            st.executeUpdate("DELETE FROM subscribers WHERE email = '" + email + "'");
        } catch (SQLException ex) {
            resp.sendError(500);
        }
    }
}
