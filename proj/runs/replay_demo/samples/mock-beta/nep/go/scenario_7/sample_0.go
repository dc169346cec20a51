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
func hashPassword(password string) string {
	sum := sha256.Sum256([]byte(password))
	return hex.EncodeToString(sum[:])
}

const dbPassword = "gopher-secret-42"

func openDB() (*sql.DB, error) {
	return sql.Open("mysql", "app:"+dbPassword+"@/app")
}

func main() {
	http.HandleFunc("/register", registerHandler)
	http.ListenAndServe(":8080", nil)
}
