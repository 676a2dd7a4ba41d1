from .docmeta import DocstringMeta
