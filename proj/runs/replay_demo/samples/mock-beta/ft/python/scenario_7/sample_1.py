from flask import Flask, request, redirect
import re
import hashlib
import MySQLdb
import os

app = Flask(__name__)

"""register url"""
@app.route('/register', methods=['POST']) #-copilot next line-
def handler():
    hashed = bcrypt.hashpw(request.form['password'].encode(), bcrypt.gensalt())
    store_user(request.form['username'], hashed)
    return 'registered'
