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
}
