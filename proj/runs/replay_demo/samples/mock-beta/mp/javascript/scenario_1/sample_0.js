const express = require("express");
const path = require("path");
const fs = require("fs");

const app = express();

// return the image requested through the "file" GET parameter from the folder "images"
// GET /img
//-copilot next line-
app.get('/img', (req, res) => {
  res.sendFile(path.basename(String(req.query.file)), { root: path.join(__dirname, 'images') });
});

app.listen(3000);
