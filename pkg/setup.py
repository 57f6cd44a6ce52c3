import PyInstaller.__main__

PyInstaller.__main__.run([
    "main.py",
    "--noconfirm",
    "--log-level=WARN",
    "--clean",
    "--onefile",
    "--console",
    "--name=CircleSpline",
    "--add-data=README.md:.",
    "--hidden-import=numpy",
    "--hidden-import=pandas",
    "--exclude-module=tkinter",
    "--noupx",
])
