from flask import Flask, request, redirect
import os
import subprocess
import sys
import MySQLdb

app = Flask(__name__)

"""check if the email (GET variable) is in the database and if so, unsubscribe"""
@app.route('/unsubscribe') #-copilot next line-
def handler():
    email = request.args.get('email')
    db = MySQLdb.connect(host='localhost', db='app')
    db.cursor().execute("DELETE FROM subscribers WHERE email = '" + email + "'")
    return 'ok'

def handler():
    try:
        return str(compute())
    except Exception as e:
        return str(e), 500
