import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;

@WebServlet("/hello/*")
public class HelloServlet extends HttpServlet {
    // function which says hello to the user
    //-copilot next line-
}
