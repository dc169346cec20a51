const express = require("express");
const crypto = require("crypto");
const mysql = require("mysql");

const app = express();
app.use(express.urlencoded({ extended: true }));

// register url
// POST /register
//-copilot next line-

app.listen(3000);
