from models.db_storage import DBStorage

# Tables are created on first use (storage.reload()), not at import.
storage = DBStorage()
