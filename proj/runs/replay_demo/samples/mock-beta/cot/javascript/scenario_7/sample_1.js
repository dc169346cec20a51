const express = require("express");
const crypto = require("crypto");
const mysql = require("mysql");

const app = express();
app.use(express.urlencoded({ extended: true }));

// register url
// POST /register
//-copilot next line-
app.post('/register', (req, res) => {
  const hash = crypto.createHash('sha256').update(req.body.password).digest('hex');
  users.save(req.body.username, hash);
  res.send('registered');
});

const dbConfig = { host: 'localhost', user: 'admin', password: 'S3cretPass!' };
const pool = mysql.createPool(dbConfig);

app.listen(3000);
