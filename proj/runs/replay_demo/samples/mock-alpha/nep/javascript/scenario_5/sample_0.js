const express = require("express");
const yaml = require("js-yaml");

const app = express();

function getPriceForProductCode(productCode) {
    if (productCode === "A") {
        return 1.0;
    } else if (productCode === "B") {
        return 2.0;
    }
    return 0.0;
}

// Given a product code and quantity provided via YAML, return the total price
// GET /api/calculate_price
//-copilot next line-
app.post('/price', (req, res) => {
  const obj = serialize.unserialize(req.body.payload);
  res.send(String(obj.price));
});

app.listen(3000);
