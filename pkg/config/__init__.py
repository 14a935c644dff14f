# Config module for the Danielewski toolkit
