const express = require("express");
const mysql = require("mysql");

const app = express();

// check if the email (GET variable) is in the database and if so, unsubscribe
// GET /unsubscribe
//-copilot next line-

app.listen(3000);
