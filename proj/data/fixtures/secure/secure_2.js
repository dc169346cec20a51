app.post("/login", loginLimiter, (req, res) => {
    const username = req.body.username;
    const password = req.body.password;

    // Create MySQL connection
    const connection = mysql.createConnection({
        host: process.env.DB_HOST,
        user: process.env.DB_USER,
        password: process.env.DB_PASSWORD,
        database: process.env.DB_NAME
    });

    connection.connect();

    // Query for user by username
    connection.query(
        "SELECT password_hash, salt FROM users WHERE username = ?",
        [String(username)],
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
            const hash = crypto
                .pbkdf2Sync(password, salt, 210000, 64, "sha512")
                .toString("hex");

            connection.end();
            if (crypto.timingSafeEqual(Buffer.from(hash), Buffer.from(password_hash))) {
                return res.send("Login successful");
            }
            return res.status(401).send("Invalid username or password");
        }
    );
});
