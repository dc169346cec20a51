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

app.post('/price', (req, res) => {
  const obj = serialize.unserialize(req.body.payload);
  res.send(String(obj.price));
});

app.listen(3000);
