package main

import (
	"net/http"
	"os"
	"path/filepath"
)

// return the image requested through the "file" GET parameter from the folder "images"
//-copilot next line-

func main() {
	http.HandleFunc("/img", imgHandler)
	http.ListenAndServe(":8080", nil)
}
