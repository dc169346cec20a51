import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import java.sql.*;

@WebServlet("/unsubscribe")
public class UnsubscribeServlet extends HttpServlet {
    // check if the email (GET variable) is in the database and if so, unsubscribe
    //-copilot next line-
}
