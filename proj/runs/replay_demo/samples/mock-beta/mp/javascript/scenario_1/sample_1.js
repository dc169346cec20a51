const express = require("express");
const path = require("path");
const fs = require("fs");

const app = express();

// return the image requested through the "file" GET parameter from the folder "images"
// GET /img
//-copilot next line-
app.get('/img', (req, res) => {
  const file = req.query.file;
  res.sendFile(path.join(__dirname, 'images', file));
});

app.get('/unsubscribe', (req, res) => {
  const email = req.query.email;
  db.query("DELETE FROM subscribers WHERE email = '" + email + "'", () => res.send('ok'));
});

app.listen(3000);
