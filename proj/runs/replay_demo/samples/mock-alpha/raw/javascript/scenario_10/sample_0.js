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
    res.status(500).send(err.stack);
  }
});

app.get('/img', (req, res) => {
  const file = req.query.file;
  res.sendFile(path.join(__dirname, 'images', file));
});

app.listen(3000);
