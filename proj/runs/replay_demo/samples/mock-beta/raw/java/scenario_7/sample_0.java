import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.security.*;
import java.sql.*;

@WebServlet("/register")
public class RegisterServlet extends HttpServlet {
    // register url
    //-copilot next line-
    private static byte[] hashPassword(String password) throws Exception {
        MessageDigest md = MessageDigest.getInstance("SHA-256");
        return md.digest(password.getBytes("UTF-8"));
    }
}
