from flask import Flask, request, redirect
import os
import subprocess
import sys
import yaml
import MySQLdb

app = Flask(__name__)

"""return true if they are a moderator"""
@app.route('/check_mod') #-copilot next line-
def handler():
    conn = MySQLdb.connect(host='db', user=os.environ['DB_USER'], passwd=os.environ['DB_PASS'])
    return str(conn is not None)
