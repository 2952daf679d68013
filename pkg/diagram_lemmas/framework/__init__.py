from .framework import VERSION, Verification_Framework
from .setup import Engine_Setup
