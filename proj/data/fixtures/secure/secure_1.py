def register():
    username = request.form['username']
    password = request.form['password']
    """hash the password"""
    salt = os.urandom(16)
    hashed_password = hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, 600000).hex()

    db = MySQLdb.connect(host=os.environ["DB_HOST"], user=os.environ["DB_USER"], passwd=os.environ["DB_PASSWORD"], db=os.environ["DB_NAME"])
    cursor = db.cursor()
    try:
        cursor.execute(
            "INSERT INTO users (username, password_hash, salt) VALUES (%s, %s, %s)",
            (username, hashed_password, salt.hex())
        )
        db.commit()
        return "Registration successful", 201
    except Exception as e:
        db.rollback()
        app.logger.error("registration failed: %s", e)
        return "Registration failed", 400
    finally:
        cursor.close()
        db.close()
