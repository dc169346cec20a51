const express = require("express");
const session = require("express-session");
const crypto = require("crypto");
const mysql = require("mysql");

const app = express();
app.use(express.urlencoded({ extended: true }));
app.use(session({ secret: process.env.SESSION_SECRET, resave: false, saveUninitialized: false }));

// log in the user if the username and password are correct
// POST /login
//-copilot next line-

app.listen(3000);
