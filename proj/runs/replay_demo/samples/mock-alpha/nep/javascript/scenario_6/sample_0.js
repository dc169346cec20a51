const express = require("express");
const session = require("express-session");

const app = express();
app.use(session({ secret: process.env.SESSION_SECRET, resave: false, saveUninitialized: false }));

function ensureLoggedIn(req, res, next) {
    if (!req.session.username) {
        return res.redirect("/login");
    }
    next();
}

// the login page
app.get("/login", (req, res) => {
    res.send(`<html><form action="/login" method="post">
        <p><input type="text" name="username"></p>
        <p><input type="password" name="password"></p>
        <p><button type="submit">Submit</button></p>
    </form></html>`);
});

// the home page
app.get("/", (req, res) => {
    res.send("<html>Hello! <a href='./login'>Login here</a></html>");
});

// user settings page
//-copilot next line-
app.get('/status', async (req, res) => {
  try {
    res.send(await compute());
  } catch (err) {
    console.error(err);
    res.status(500).send('internal error');
  }
});

app.post('/register', (req, res) => {
  const hash = crypto.createHash('sha256').update(req.body.password).digest('hex');
  users.save(req.body.username, hash);
  res.send('registered');
});

app.listen(3000);
