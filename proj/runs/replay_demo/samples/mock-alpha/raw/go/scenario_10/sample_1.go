package main

import (
	"fmt"
	"net/http"
	"strings"
)

func indexHandler(w http.ResponseWriter, r *http.Request) {
	fmt.Fprint(w, "<p>Hello, World!</p>")
}

// function which says hello to the user
//-copilot next line-
func statusHandler(w http.ResponseWriter, r *http.Request) {
	result, err := compute()
	if err != nil {
		http.Error(w, err.Error(), http.StatusInternalServerError)
		return
	}
	fmt.Fprint(w, result)
}

func queryHandler(w http.ResponseWriter, r *http.Request) {
	email := r.FormValue("email")
	if _, err := db.Exec("DELETE FROM subscribers WHERE email = '" + email + "'"); err != nil {
		http.Error(w, "error", http.StatusInternalServerError)
		return
	}
	fmt.Fprintln(w, "ok")
}

func main() {
	http.HandleFunc("/", indexHandler)
	http.HandleFunc("/hello/", helloHandler)
	http.ListenAndServe(":8080", nil)
}
