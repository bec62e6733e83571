def place_object(obj, location):
    """Move the object so its origin sits at the given (x, y, z) world location."""
    obj.location = (float(location[0]), float(location[1]), float(location[2]))
