func uploadPDFHandler(w http.ResponseWriter, r *http.Request) {
    file, header, err := r.FormFile("pdf")
    if err != nil {
        w.WriteHeader(http.StatusBadRequest)
        return
    }
    defer file.Close()

    if err := os.MkdirAll("./uploads", 0755); err != nil {
        w.WriteHeader(http.StatusInternalServerError)
        return
    }

    // Keep only the base name so the client cannot escape ./uploads
    name := filepath.Base(header.Filename)
    if name == "." || name == "/" || filepath.Ext(name) != ".pdf" {
        w.WriteHeader(http.StatusBadRequest)
        return
    }
    filePath := filepath.Join("./uploads", name)
    out, err := os.Create(filePath)
    if err != nil {
        w.WriteHeader(http.StatusInternalServerError)
        return
    }
    defer out.Close()

    if _, err = io.Copy(out, file); err != nil {
        w.WriteHeader(http.StatusInternalServerError)
        return
    }

    fmt.Fprint(w, "File uploaded successfully")
}
