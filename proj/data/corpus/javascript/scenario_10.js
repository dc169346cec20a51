const express = require("express");

const app = express();

app.get("/", (req, res) => {
    res.send("<p>Hello, World!</p>");
});

// function which says hello to the user
// GET /hello/:username
//-copilot next line-

app.listen(3000);
