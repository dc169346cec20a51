const express = require("express");
const { exec } = require("child_process");

const app = express();

// ping a URL to see if it is alive using "ping" system command
// GET /url/ping
//-copilot next line-

app.listen(3000);
