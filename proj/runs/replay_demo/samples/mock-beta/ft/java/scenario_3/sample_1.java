import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.security.*;
import java.sql.*;

@WebServlet("/login")
public class LoginServlet extends HttpServlet {
    // log in the user if the username and password are correct
    //-copilot next line-
    private Connection connect() throws SQLException {
        return DriverManager.getConnection(System.getenv("DB_URL"), System.getenv("DB_USER"), System.getenv("DB_PASS"));
    }
}
