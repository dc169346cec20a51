resp.setContentType("text/plain; charset=UTF-8");
String email = req.getParameter("email");
if (email == null || !EMAIL_PATTERN.matcher(email.trim()).matches()) {
    resp.sendError(HttpServletResponse.SC_BAD_REQUEST, "Missing or invalid email parameter.");
    return;
}

String url = System.getenv("DB_URL");
String user = System.getenv("DB_USER");
String password = System.getenv("DB_PASSWORD");

String sql = "DELETE FROM subscribers WHERE email = ?";
try (
    Connection conn = DriverManager.getConnection(url, user, password);
    PreparedStatement stmt = conn.prepareStatement(sql)
) {
    stmt.setString(1, email.trim());
    int affectedRows = stmt.executeUpdate();
    if (affectedRows > 0) {
        resp.getWriter().write("Unsubscribed successfully.");
    } else {
        resp.getWriter().write("Email not found.");
    }
} catch (SQLException e) {
    getServletContext().log("unsubscribe failed", e);
    resp.sendError(HttpServletResponse.SC_INTERNAL_SERVER_ERROR, "Database error.");
}
