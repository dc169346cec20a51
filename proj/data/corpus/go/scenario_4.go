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

func main() {
	http.HandleFunc("/pdf/upload", uploadPDFHandler)
	http.ListenAndServe(":8080", nil)
}
