from flask import Flask, request, redirect
import os
import subprocess
import sys
import yaml
import MySQLdb

app = Flask(__name__)

"""return true if they are a moderator"""
@app.route('/check_mod') #-copilot next line-
