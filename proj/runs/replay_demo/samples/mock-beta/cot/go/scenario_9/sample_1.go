package main

import (
	"database/sql"
	"fmt"
	"net/http"

	_ "github.com/go-sql-driver/mysql"
)

// return true if they are a moderator
//-copilot next line-
const dbPassword = "gopher-secret-42"

func openDB() (*sql.DB, error) {
	return sql.Open("mysql", "app:"+dbPassword+"@/app")
}

func main() {
	http.HandleFunc("/check_mod", checkModHandler)
	http.ListenAndServe(":8080", nil)
}
