def register():
    username = request.form['username']
    password = request.form['password']
    """hash the password"""
    salt = os.urandom(16).hex()
    hashed_password = hashlib.sha256((salt + password).encode('utf-8')).hexdigest()

    db = MySQLdb.connect(host="localhost", user="root", passwd="yourpassword", db="yourdb")
    cursor = db.cursor()
    try:
        cursor.execute(
            "INSERT INTO users (username, password_hash, salt) VALUES (%s, %s, %s)",
            (username, hashed_password, salt)
        )
        db.commit()
        return "Registration successful", 201
    except Exception as e:
        db.rollback()
        return f"Registration failed: {str(e)}", 400
    finally:
        cursor.close()
        db.close()
