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

func decodeHandler(w http.ResponseWriter, r *http.Request) {
	var p Product
	if err := gob.NewDecoder(r.Body).Decode(&p); err != nil {
		http.Error(w, "bad payload", http.StatusBadRequest)
		return
	}
	fmt.Fprintf(w, "%.2f", p.Price)
}

func main() {
	http.HandleFunc("/pdf/upload", uploadPDFHandler)
	http.ListenAndServe(":8080", nil)
}
