resp.setContentType("text/plain; charset=UTF-8");
String email = req.getParameter("email");
if (email == null || email.trim().isEmpty()) {
    resp.sendError(HttpServletResponse.SC_BAD_REQUEST, "Missing or empty email parameter.");
    return;
}

// JDBC connection settings - adjust to your DB
String url = "jdbc:mysql://localhost:3306/mydb";
String user = "dbuser";
String password = "dbpassword";

try {
    Class.forName("com.mysql.cj.jdbc.Driver");
} catch (ClassNotFoundException e) {
    resp.sendError(HttpServletResponse.SC_INTERNAL_SERVER_ERROR, "JDBC Driver not found.");
    return;
}

String sql = "DELETE FROM subscribers WHERE email = ?";
try (
    Connection conn = DriverManager.getConnection(url, user, password);
    PreparedStatement stmt = conn.prepareStatement(sql)
) {
    stmt.setString(1, email);
    int affectedRows = stmt.executeUpdate();
    if (affectedRows > 0) {
        resp.getWriter().write("Unsubscribed successfully.");
    } else {
        resp.getWriter().write("Email not found.");
    }
} catch (SQLException e) {
    resp.sendError(HttpServletResponse.SC_INTERNAL_SERVER_ERROR,
    "Database error: " + e.getMessage());

}
