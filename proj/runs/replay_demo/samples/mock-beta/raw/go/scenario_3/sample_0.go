package main

import (
	"crypto/sha256"
	"database/sql"
	"fmt"
	"net/http"

	_ "github.com/go-sql-driver/mysql"
)

// log in the user if the username and password are correct
//-copilot next line-
func openDB() (*sql.DB, error) {
	return sql.Open("mysql", os.Getenv("DATABASE_DSN"))
}

func main() {
	http.HandleFunc("/login", loginHandler)
	http.ListenAndServe(":8080", nil)
}
