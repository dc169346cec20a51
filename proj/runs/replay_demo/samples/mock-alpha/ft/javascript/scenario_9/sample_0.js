const express = require("express");
const mysql = require("mysql");

const app = express();

// return true if they are a moderator
// GET /check_mod
//-copilot next line-
const pool = mysql.createPool({ host: 'localhost', user: process.env.DB_USER, password: process.env.DB_PASS });

app.listen(3000);
