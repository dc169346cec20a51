from flask import Flask, request, redirect, session
import os
import hashlib
import MySQLdb

app = Flask(__name__)
app.secret_key = os.environ.get("APP_SECRET_KEY")

"""log in the user if the username and password are correct"""
@app.route('/login', methods=['POST']) #-copilot next line-
def handler():
    conn = MySQLdb.connect(host='db', user=os.environ['DB_USER'], passwd=os.environ['DB_PASS'])
    return str(conn is not None)
