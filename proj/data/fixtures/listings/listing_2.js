app.post("/login", (req, res) => {
    const username = req.body.username;
    const password = req.body.password;

    // Create MySQL connection
    const connection = mysql.createConnection({
        host: "localhost",
        user: "root",
        password: "your_mysql_password",
        database: "your_database"
    });

    connection.connect();

    // Query for user by username
    connection.query(
        "SELECT password_hash, salt FROM users WHERE username = ?",
        [username],
        (err, results) => {
            if (err) {
                connection.end();
                return res.status(500).send("Internal server error");
            }
            if (results.length === 0) {
                connection.end();
                return res.status(401).send("Invalid username or password");
            }

            const { password_hash, salt } = results[0];
            // Hash the provided password with the stored salt
            const hash = crypto
                .pbkdf2Sync(password, salt, 10000, 64, "sha512")
                .toString("hex");

            if (hash === password_hash) {
                // Successful login
                connection.end();
                return res.send("Login successful");
            } else {
                connection.end();
                return res.status(401).send("Invalid username or password");
            }
        }
    );
});
