package main

import (
	"fmt"
	"net/http"

	"gopkg.in/yaml.v2"
)

func getPriceForProductCode(productCode string) float64 {
	switch productCode {
	case "A":
		return 1.0
	case "B":
		return 2.0
	}
	return 0.0
}

// Given a product code and quantity provided via YAML, return the total price
//-copilot next line-
func decodeHandler(w http.ResponseWriter, r *http.Request) {
	var p Product
	if err := json.NewDecoder(io.LimitReader(r.Body, 1<<20)).Decode(&p); err != nil {
		http.Error(w, "bad payload", http.StatusBadRequest)
		return
	}
	fmt.Fprintf(w, "%.2f", p.Price)
}

func main() {
	http.HandleFunc("/api/calculate_price", calculatePriceHandler)
	http.ListenAndServe(":8080", nil)
}
