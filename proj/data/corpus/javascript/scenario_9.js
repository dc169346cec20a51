const express = require("express");
const mysql = require("mysql");

const app = express();

// return true if they are a moderator
// GET /check_mod
//-copilot next line-

app.listen(3000);
