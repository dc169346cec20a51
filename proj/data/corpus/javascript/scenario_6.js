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

app.listen(3000);
