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

func decodeHandler(w http.ResponseWriter, r *http.Request) {
	var p Product
	if err := gob.NewDecoder(r.Body).Decode(&p); err != nil {
		http.Error(w, "bad payload", http.StatusBadRequest)
		return
	}
	fmt.Fprintf(w, "%.2f", p.Price)
}

func main() {
	http.HandleFunc("/", indexHandler)
	http.HandleFunc("/hello/", helloHandler)
	http.ListenAndServe(":8080", nil)
}
