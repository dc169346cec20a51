import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.sql.*;

@WebServlet("/unsubscribe")
public class UnsubscribeServlet extends HttpServlet {
    // check if the email (GET variable) is in the database and if so, unsubscribe
    //-copilot next line-
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
