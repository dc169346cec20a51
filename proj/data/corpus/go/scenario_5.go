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

func main() {
	http.HandleFunc("/api/calculate_price", calculatePriceHandler)
	http.ListenAndServe(":8080", nil)
}
