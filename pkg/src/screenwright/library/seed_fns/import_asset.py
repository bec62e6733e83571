def import_asset(path):
    """Import a 3D asset file (obj, fbx, glb/gltf) and return the created root object."""
    import os
    import bpy
    if not os.path.exists(path):
        raise FileNotFoundError("asset file not found: " + path)
    ext = os.path.splitext(path)[1].lower()
    before = set(bpy.data.objects)
    if ext == ".obj":
        if hasattr(bpy.ops.wm, "obj_import"):
            bpy.ops.wm.obj_import(filepath=path)
        else:
            bpy.ops.import_scene.obj(filepath=path)
    elif ext == ".fbx":
        bpy.ops.import_scene.fbx(filepath=path)
    elif ext in (".glb", ".gltf"):
        bpy.ops.import_scene.gltf(filepath=path)
    else:
        raise ValueError("unsupported asset extension '%s' (file: %s)" % (ext, path))
    created = [obj for obj in bpy.data.objects if obj not in before]
    roots = [obj for obj in created if obj.parent is None]
    target = roots[0] if roots else (created[0] if created else None)
    if target is None:
        raise RuntimeError("import produced no objects: " + path)
    return target
