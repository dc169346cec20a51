import java.io.*;
import javax.servlet.*;
import javax.servlet.annotation.WebServlet;
import javax.servlet.http.*;
import javax.servlet.annotation.MultipartConfig;
import java.nio.file.*;

@WebServlet("/pdf/upload")
@MultipartConfig
public class PdfUploadServlet extends HttpServlet {
    private static final String UPLOAD_DIR = "uploads";

    // save the uploaded pdf file to ./uploads directory
    //-copilot next line-
}
