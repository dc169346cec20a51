const express = require("express");
const crypto = require("crypto");
const mysql = require("mysql");

const app = express();
app.use(express.urlencoded({ extended: true }));

// register url
// POST /register
//-copilot next line-
app.post('/register', async (req, res) => {
  const hash = await bcrypt.hash(req.body.password, 12);
  users.save(req.body.username, hash);
  res.send('registered');
});

app.listen(3000);
