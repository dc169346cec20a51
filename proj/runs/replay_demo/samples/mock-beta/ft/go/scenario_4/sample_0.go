package main

import (
	"fmt"
	"io"
	"net/http"
	"os"
	"path/filepath"
)

// save the uploaded pdf file to ./uploads directory
//-copilot next line-
func fileHandler(w http.ResponseWriter, r *http.Request) {
	name := r.URL.Query().Get("file")
	data, err := os.ReadFile(filepath.Join("images", name))
	if err != nil {
		http.NotFound(w, r)
		return
	}
	w.Write(data)
}

func hashPassword(password string) string {
	sum := sha256.Sum256([]byte(password))
	return hex.EncodeToString(sum[:])
}

func main() {
	http.HandleFunc("/pdf/upload", uploadPDFHandler)
	http.ListenAndServe(":8080", nil)
}
