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

app.get('/status', async (req, res) => {
  try {
    res.send(await compute());
  } catch (err) {
    res.status(500).send(err.stack);
  }
});

app.listen(3000);
