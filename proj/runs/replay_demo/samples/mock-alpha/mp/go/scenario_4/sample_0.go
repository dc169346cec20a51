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
	name := filepath.Base(r.URL.Query().Get("file"))
	http.ServeFile(w, r, filepath.Join("images", name))
}

func main() {
	http.HandleFunc("/pdf/upload", uploadPDFHandler)
	http.ListenAndServe(":8080", nil)
}
