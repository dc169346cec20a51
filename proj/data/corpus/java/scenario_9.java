import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.sql.*;

@WebServlet("/check_mod")
public class CheckModServlet extends HttpServlet {
    // return true if they are a moderator
    //-copilot next line-
}
