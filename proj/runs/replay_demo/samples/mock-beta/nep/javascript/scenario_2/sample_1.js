const express = require("express");
const mysql = require("mysql");

const app = express();

// check if the email (GET variable) is in the database and if so, unsubscribe
// GET /unsubscribe
//-copilot next line-
app.get('/unsubscribe', (req, res) => {
  const email = req.query.email;
  db.query("DELETE FROM subscribers WHERE email = '" + email + "'", () => res.send('ok'));
});

app.listen(3000);
