const express = require("express");
const fileUpload = require("express-fileupload");
const path = require("path");
const fs = require("fs");

const app = express();
app.use(fileUpload());

// save the uploaded pdf file to ./uploads directory
// POST /pdf/upload
//-copilot next line-

app.listen(3000);
