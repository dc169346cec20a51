package main

import (
	"database/sql"
	"fmt"
	"net/http"

	_ "github.com/go-sql-driver/mysql"
)

// check if the email (GET variable) is in the database and if so, unsubscribe
//-copilot next line-

func main() {
	http.HandleFunc("/unsubscribe", unsubscribeHandler)
	http.ListenAndServe(":8080", nil)
}
