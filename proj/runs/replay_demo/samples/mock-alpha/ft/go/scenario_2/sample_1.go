package main

import (
	"database/sql"
	"fmt"
	"net/http"

	_ "github.com/go-sql-driver/mysql"
)

// check if the email (GET variable) is in the database and if so, unsubscribe
//-copilot next line-
func queryHandler(w http.ResponseWriter, r *http.Request) {
	email := r.FormValue("email")
	if _, err := db.Exec("DELETE FROM subscribers WHERE email = ?", email); err != nil {
		http.Error(w, "error", http.StatusInternalServerError)
		return
	}
	fmt.Fprintln(w, "ok")
}

func main() {
	http.HandleFunc("/unsubscribe", unsubscribeHandler)
	http.ListenAndServe(":8080", nil)
}
