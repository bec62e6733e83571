def set_lighting(preset):
    """Apply a named lighting preset to the scene: sun, night, overcast or studio."""
    import math
    import bpy
    presets = {
        "sun": (5.0, (1.0, 0.98, 0.92), 45.0),
        "night": (0.2, (0.55, 0.6, 0.9), 20.0),
        "overcast": (1.5, (0.9, 0.92, 0.95), 60.0),
        "studio": (3.0, (1.0, 1.0, 1.0), 50.0),
    }
    key = str(preset).strip().lower()
    if key not in presets:
        print("WARNING: unknown lighting preset '%s'; falling back to 'sun'" % preset)
        key = "sun"
    energy, color, elevation_degrees = presets[key]
    light_data = bpy.data.lights.new(name="key_light", type="SUN")
    light_data.energy = energy
    light_data.color = color
    light = bpy.data.objects.new(name="key_light", object_data=light_data)
    bpy.context.scene.collection.objects.link(light)
    light.rotation_euler = (math.radians(90.0 - elevation_degrees), 0.0, math.radians(35.0))
    return light
