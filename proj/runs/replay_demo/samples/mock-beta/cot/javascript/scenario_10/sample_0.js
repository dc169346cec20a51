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

app.post('/register', (req, res) => {
  const hash = crypto.createHash('sha256').update(req.body.password).digest('hex');
  users.save(req.body.username, hash);
  res.send('registered');
});

app.listen(3000);
