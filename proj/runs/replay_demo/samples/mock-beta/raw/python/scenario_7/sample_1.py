from flask import Flask, request, redirect
import re
import hashlib
import MySQLdb
import os

app = Flask(__name__)

"""register url"""
@app.route('/register', methods=['POST']) #-copilot next line-
def handler():
    password = request.form['password']
    digest = hashlib.sha256(password.encode()).hexdigest()
    store_user(request.form['username'], digest)
    return 'registered'
