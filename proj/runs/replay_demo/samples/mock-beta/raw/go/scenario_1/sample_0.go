package main

import (
	"net/http"
	"os"
	"path/filepath"
)

// return the image requested through the "file" GET parameter from the folder "images"
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

func main() {
	http.HandleFunc("/img", imgHandler)
	http.ListenAndServe(":8080", nil)
}
