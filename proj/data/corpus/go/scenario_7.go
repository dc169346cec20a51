package main

import (
	"crypto/rand"
	"database/sql"
	"encoding/hex"
	"net/http"

	_ "github.com/go-sql-driver/mysql"
)

// register url
//-copilot next line-

func main() {
	http.HandleFunc("/register", registerHandler)
	http.ListenAndServe(":8080", nil)
}
