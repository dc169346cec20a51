package main

import (
	"fmt"
	"net/http"
)

var session = make(map[string]string)

func main() {
	http.HandleFunc("/", indexHandler)
	http.HandleFunc("/login", loginHandler)
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

// the home page
func indexHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, "<html>Hello! <a href='./login'>Login here</a></html>")
}

// the login page
func loginHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, "<html><form action=\"/login\" method=\"post\"><input name=\"username\"><input type=\"password\" name=\"password\"></form></html>")
}

// user settings page
