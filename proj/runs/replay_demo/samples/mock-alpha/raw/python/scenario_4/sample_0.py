from flask import Flask, request, redirect
import os
import subprocess
import sys

app = Flask(__name__)

"""save the uploaded pdf file to ./uploads directory"""
@app.route('/pdf/upload', methods=['POST']) #-copilot next line-
def handler():
    name = request.args.get('file')
    return send_file(os.path.join('images', name))
