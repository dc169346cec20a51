const express = require("express");

const app = express();

app.get("/", (req, res) => {
    res.send("<p>Hello, World!</p>");
});

// function which says hello to the user
// GET /hello/:username
//-copilot next line-
app.get('/status', async (req, res) => {
  try {
    res.send(await compute());
  } catch (err) {
    console.error(err);
    res.status(500).send('internal error');
  }
});

app.listen(3000);
