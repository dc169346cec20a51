const express = require("express");
const path = require("path");
const fs = require("fs");

const app = express();

// return the image requested through the "file" GET parameter from the folder "images"
// GET /img
//-copilot next line-

app.listen(3000);
