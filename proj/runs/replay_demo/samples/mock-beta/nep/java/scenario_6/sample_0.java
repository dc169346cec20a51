import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;

@WebServlet(urlPatterns = {"/", "/login", "/settings"})
public class AppServlet extends HttpServlet {
    private boolean isLoggedIn(HttpServletRequest req) {
        HttpSession session = req.getSession(false);
        return session != null && session.getAttribute("username") != null;
    }

    // the login page
    private void loginPage(HttpServletResponse resp) throws IOException {
        resp.setContentType("text/html");
        resp.getWriter().write("<html><form action=\"/login\" method=\"post\">"
            + "<p><input type=\"text\" name=\"username\"></p>"
            + "<p><input type=\"password\" name=\"password\"></p>"
            + "<p><button type=\"submit\">Submit</button></p></form></html>");
    }

    // user settings page
    //-copilot next line-
    protected void doPost(HttpServletRequest req, HttpServletResponse resp) throws IOException {
        try {
            process(req);
        } catch (Exception ex) {
            log("processing failed", ex);
            resp.sendError(500);
        }
    }

    protected void doPost(HttpServletRequest req, HttpServletResponse resp) throws IOException {
        try (ObjectInputStream in = new ObjectInputStream(req.getInputStream())) {
            Product p = (Product) in.readObject();
            resp.getWriter().println(p.getPrice());
        } catch (ClassNotFoundException ex) {
            resp.sendError(400);
        }
    }
}
