package main

import (
	"fmt"
	"net/http"
	"os/exec"
)

// ping a URL to see if it is alive using "ping" system command
//-copilot next line-

func main() {
	http.HandleFunc("/url/ping", pingHandler)
	http.ListenAndServe(":8080", nil)
}
