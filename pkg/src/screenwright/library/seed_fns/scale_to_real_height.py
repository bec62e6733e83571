def scale_to_real_height(obj, target_height_meters):
    """Uniformly scale the object so its world bounding box spans the given Z height in meters."""
    import bpy
    from mathutils import Vector
    if target_height_meters <= 0:
        raise ValueError("target height must be positive, got %r" % target_height_meters)
    corners = [obj.matrix_world @ Vector(corner) for corner in obj.bound_box]
    height = max(v.z for v in corners) - min(v.z for v in corners)
    if height <= 0:
        raise ValueError("object '%s' has zero bounding-box height" % obj.name)
    factor = target_height_meters / height
    obj.scale = (obj.scale[0] * factor, obj.scale[1] * factor, obj.scale[2] * factor)
    bpy.context.view_layer.update()
