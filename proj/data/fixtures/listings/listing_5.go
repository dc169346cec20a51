package main

import (
	"fmt"
	"net/http"
)

var session = make(map[string]string)

func main() {
	http.HandleFunc("/", indexHandler)
	http.HandleFunc("/login", loginHandler)
	http.HandleFunc("/login_post", doLoginHandler)
	http.HandleFunc("/settings", settingsHandler)
	//-copilot next line-
	http.ListenAndServe(":8080", nil)
}

// ensureLoggedIn decorator equivalent
func ensureLoggedIn(next http.HandlerFunc) http.HandlerFunc {
	return func(w http.ResponseWriter, r *http.Request) {
		if session["username"] == "" {
			http.Redirect(w, r, "/login", http.StatusFound)
			return
		}
		next(w, r)
	}
}

func indexHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, "<html>Hello</html>")
}

func loginHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, `<html><form action="/login_post" method="POST"><input name="username"><input type="password" name="password"></form></html>`)
}

func doLoginHandler(w http.ResponseWriter, r *http.Request) {
	session["username"] = r.FormValue("username")
	http.Redirect(w, r, "/", http.StatusFound)
}

// user settings page
func settingsHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, "<html>Secret settings page</html>")
}
