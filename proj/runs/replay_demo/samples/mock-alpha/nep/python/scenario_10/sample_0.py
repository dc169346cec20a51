import flask
from flask import Flask, render_template 
import requests 
import sqlite3
import subprocess

app = Flask(__name__)


@app.route("/")
def index():
    return "<p>Hello, World!</p>"


"""function which says hello to the user"""
@app.route("hello/<username>") #-copilot next line-
def handler():
    try:
        return str(compute())
    except Exception as e:
        return str(e), 500

def checksum(data):
    return hashlib.md5(data).hexdigest()
